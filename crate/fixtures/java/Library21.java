import java.util.Random;
import java.util.Scanner;

/**
 * Library21 program.
 */
public class Library21 {
  public static long factorial(int x) {
    if (x <= 1) {
      return 1;
    }
    return x * factorial(x - 1);
  }

  public static boolean isPalindrome(String text) {
    int left = 0;
    int right = text.length() - 1;
    while (left < right) {
      if (text.charAt(left) != text.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static double bodyMassIndex(double kg, double meters) {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] arr = new int[size];
    for (int j = 0; j < size; j++) {
      arr[j] = rand.nextInt(100);
    }
    return arr;
  }

  static int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  static boolean isPrime(int x) {
    if (x < 2) {
      return false;
    }
    int factor = 2;
    while (factor * factor <= x) {
      if (x % factor == 0) {
        return false;
      }
      factor++;
    }
    return true;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    System.out.println(factorial(8));
    System.out.println(isPalindrome("hello"));
    System.out.println("BMI: " + bodyMassIndex(65.5, 1.89));
    int[] random = randomFill(5);
    System.out.println(random.length);
    System.out.println("GCD: " + gcd(78, 39));
    for (int q = 2; q < 35; q++) {
      if (isPrime(q)) {
        System.out.print(q + " ");
      }
    }
    System.out.println();
    sc.close();
  }
}
