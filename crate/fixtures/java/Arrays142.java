// Practice problem
import java.util.Scanner;

/**
 * Arrays142 program.
 */
public class Arrays142 {
  public static long factorial(int n) {
    if (n <= 1) {
      return 1;
    }
    return n * factorial(n - 1);
  }

  public static void printTriangle(int height) {
    for (int row = 1; row <= height; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  static void countDown(int remaining) {
    do {
      System.out.println(remaining);
      remaining--;
      } while (remaining > 0);
      System.out.println("Go!");
    }

  static boolean prime(int n) {
    if (n < 2) {
      return false;
    }
    int d = 2;
    while (d * d <= n) {
      if (n % d == 0) {
        return false;
      }
      d++;
    }
    return true;
  }

  public static int indexOf(int[] scores, int wanted) {
    for (int i = 0; i < scores.length; i++) {
      if (scores[i] == wanted) {
        return i;
      }
    }
    return -1;
  }

  static int fibonacci(int n) {
    int first = 0;
    int second = 1;
    for (int i = 0; i < n; i++) {
      int next = first + second;
      first = second;
      second = next;
    }
    return first;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {3, 6, 6, 4};
    System.out.println(factorial(9));
    printTriangle(5);
    countDown(4);
    for (int q = 2; q < 26; q++) {
      if (prime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    int pos = indexOf(numbers, 9);
    System.out.println("Found at " + pos);
    System.out.println("Fib: " + fibonacci(8));
    sc.close();
  }
}
