// Exercise
import java.util.ArrayList;
import java.util.Random;
import java.util.Scanner;

/**
 * Exercise93 program.
 */
public class Exercise93 {
  static void countdown(int left) {
    do {
      System.out.println(left);
      left--;
      } while (left > 0);
      System.out.println("Go!");
    }

  static double pow(double b, int e) {
    double result = 1;
    for (int j = 0; j < e; j++) {
      result *= b;
    }
    return result;
  }

  public static double toFahrenheit(double c) {
    return c * 9 / 5 + 32;
  }

  static char toLetter(int score) {
    if (score >= 90) {
      return 'A';
    } else if (score >= 80) {
      return 'B';
    } else if (score >= 70) {
      return 'C';
    } else {
      return 'F';
    }
  }

  static ArrayList<Integer> collectEven(int[] scores) {
    ArrayList<Integer> items = new ArrayList<>();
    for (int v : scores) {
      if (v % 2 == 0) {
        items.add(v);
      }
    }
    return items;
  }

  public static int abs(int x) {
    return x < 0 ? -x : x;
  }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] scores = new int[size];
    for (int j = 0; j < size; j++) {
      scores[j] = rand.nextInt(100);
    }
    return scores;
  }

  public static long factorial(int x) {
    if (x <= 1) {
      return 1;
    }
    return x * factorial(x - 1);
  }

  static boolean divisibleByTwo(int x) {
    return x % 2 == 0;
  }

  static int maxValue(int[] scores) {
    int biggest = scores[0];
    for (int j = 1; j < scores.length; j++) {
      if (scores[j] > biggest) {
        biggest = scores[j];
      }
    }
    return biggest;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {3, 2, 6, 8, 6};
    countdown(4);
    System.out.println(pow(2, 6));
    System.out.println(toFahrenheit(37.0));
    System.out.println("Grade: " + toLetter(87));
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println(abs(45));
    int[] random = randomFill(7);
    System.out.println(random.length);
    System.out.println(factorial(10));
    if (divisibleByTwo(6)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    int top = maxValue(numbers);
    System.out.println("Max is " + top);
    sc.close();
  }
}
